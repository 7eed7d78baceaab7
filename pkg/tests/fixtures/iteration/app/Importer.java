package app;

import java.io.BufferedReader;
import java.io.IOException;
import java.util.List;

public class Importer extends csv.CSVReader {
    private boolean hasNext = true;
    private List<String[]> staged = new java.util.ArrayList<String[]>();
    private int rejected;

    public Importer(BufferedReader r) {
        super(r);
    }

    public void stage() throws IOException {
        while (hasNext) {
            String[] record = readNext();
            if (record == null) {
                break;
            }
            staged.add(record);
        }
    }

    public void stageValid(int width) throws IOException {
        while (hasNext) {
            String[] record = readNext();
            if (record != null && record.length == width) {
                staged.add(record);
            } else {
                rejected++;
            }
        }
    }

    public boolean containsKey(String key) throws IOException {
        while (hasNext) {
            String[] r = readNext();
            if (r != null && key.equals(r[0])) {
                return true;
            }
        }
        return false;
    }
}
