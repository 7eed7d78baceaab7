package flow;

import io.TabbedPrintWriter;

public abstract class StructuredBlock {
    public abstract void dumpInstruction(TabbedPrintWriter writer);

    public void dumpSource(TabbedPrintWriter writer) {
        writer.tab();
        dumpInstruction(writer);
    }
}
