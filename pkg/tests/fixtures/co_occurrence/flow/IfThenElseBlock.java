package flow;

import io.TabbedPrintWriter;

public class IfThenElseBlock extends StructuredBlock {
    StructuredBlock bodyBlock;
    String cond;
    StructuredBlock elseBlock;
    public void dumpInstruction(TabbedPrintWriter writer) {
        writer.print("if (" + cond + ")");
        writer.openBrace();
        bodyBlock.dumpSource(writer);
        writer.closeBrace();
        if (elseBlock != null) {
            elseBlock.dumpSource(writer);
        }
    }
}
