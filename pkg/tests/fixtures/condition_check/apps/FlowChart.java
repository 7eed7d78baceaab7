package apps;

import java.io.File;
import java.io.IOException;
import graphviz.GraphViz;

public class FlowChart extends graphviz.DotRenderer {
    public byte[] chart(String dotSource, String type, String representationType) throws IOException {
        File dot;
        byte[] img_stream = null;
        dot = writeDotSourceToFile(dotSource);
        if (dot != null) {
            img_stream = getImgStream(dot, type, representationType);
            dot.delete();
        }
        return img_stream;
    }
}
