package flow;

import io.TabbedPrintWriter;

public class DoWhileBlock extends StructuredBlock {
    StructuredBlock bodyBlock;
    String condition;
    public void dumpInstruction(TabbedPrintWriter writer) {
        writer.print("do");
        writer.openBrace();
        bodyBlock.dumpSource(writer);
        writer.closeBrace();
        writer.println("while (" + condition + ");");
    }
}
