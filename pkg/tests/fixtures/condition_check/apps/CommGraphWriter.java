package apps;

import java.io.File;
import java.io.IOException;
import graphviz.GraphViz;

public class CommGraphWriter extends extractor.DotImage {
    private int dpi = 150;

    public byte[] write(String dotSource, String type) throws IOException {
        File dot;
        byte[] img_stream = null;
        dot = writeDotSourceToFile(dotSource);
        if (dot != null) {
            img_stream = get_img_stream(dot, type, "dot", dpi);
        }
        // cleanup
        if (dot != null) {
            dot.delete();
        }
        return img_stream;
    }
}
