package flow;

import io.TabbedPrintWriter;

public class ElseBlock extends StructuredBlock {
    StructuredBlock bodyBlock;

    public void dumpInstruction(TabbedPrintWriter writer) {
        if (bodyBlock == null) {
            return;
        }
        writer.print("else");
        writer.openBrace();
        bodyBlock.dumpSource(writer);
        writer.closeBrace();
    }
}
