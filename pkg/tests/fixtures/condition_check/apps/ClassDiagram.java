package apps;

import java.io.File;
import java.io.IOException;
import graphviz.GraphViz;

public class ClassDiagram extends GraphViz {
    private String lastError;

    public byte[] diagram(String source, String type, String representationType) throws IOException {
        File dot;
        byte[] result = new byte[0];
        dot = writeDotSourceToFile(source);
        /* the writer returns null when the temp dir is full */
        if (dot != null)
            result = get_img_stream(dot, type, representationType);
        else
            lastError = "temp dir full";
        return result;
    }
}
