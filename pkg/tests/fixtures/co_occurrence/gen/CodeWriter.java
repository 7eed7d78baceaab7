package gen;

import java.io.PrintWriter;

public class CodeWriter extends PrintWriter {
    private int depth = 0;
    private int step = 2;

    public CodeWriter(java.io.Writer w) {
        super(w);
    }

    // copied from the decompiler's writer
    public void beginBlock() {
        print(" {");
        println();
        depth += step;
        flush();
    }

    public void endBlock() {
        depth -= step;
        println("}");
    }
}
