package csv;

import java.io.BufferedReader;
import java.io.IOException;
import java.util.HashMap;
import java.util.Map;

public class QuotedReader extends CSVReader {
    private BufferedReader in;
    private boolean hasNext = true;
    private char delimiter = ';';

    public QuotedReader(BufferedReader in) {
        super(in);
        this.in = in;
    }

    // same logic as CSVReader.readNext, different names
    public String[] nextRecord() throws IOException {
        String raw = in.readLine();
        if (raw == null) {
            hasNext = false;
            return null;
        }
        return splitQuoted(raw, delimiter);
    }

    public Map<String, String> readPairs() throws IOException {
        Map<String, String> pairs = new HashMap<String, String>();
        while (hasNext) {
            String[] kv = nextRecord();
            if (kv != null && kv.length == 2) {
                pairs.put(kv[0], kv[1]);
            }
        }
        return pairs;
    }

    public void dump(java.io.PrintStream out) throws IOException {
        while (hasNext) {
            String[] cols = nextRecord();
            if (cols != null)
                out.println(String.join(" | ", cols));
        }
    }

    public String[] lastRecord() throws IOException {
        String[] last = null;
        while (hasNext) {
            String[] rec = nextRecord();
            if (rec != null) {
                last = rec;
            }
        }
        return last;
    }

    protected String[] splitQuoted(String line, char sep) {
        return line.replace("\"", "").split(String.valueOf(sep));
    }
}
