package flow;

import io.TabbedPrintWriter;

public class TryBlock extends StructuredBlock {
    StructuredBlock bodyBlock;

    public void dumpInstruction(TabbedPrintWriter writer) {
        writer.tab();
        writer.print("try");
        writer.openBrace();
        bodyBlock.dumpSource(writer);
        writer.closeBrace();
    }
}
