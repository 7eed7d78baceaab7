package flow;

import io.TabbedPrintWriter;

public class LabeledBlock extends StructuredBlock {
    StructuredBlock bodyBlock;
    String label;
    public void dumpInstruction(TabbedPrintWriter writer) {
        if (label != null) {
            writer.println(label + ":");
        }
        writer.openBrace();
        bodyBlock.dumpSource(writer);
        writer.closeBrace();
    }
}
