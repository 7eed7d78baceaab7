package tsv;

import java.io.BufferedReader;
import java.io.IOException;
import java.util.ArrayList;
import java.util.List;

public class TsvReader {
    private BufferedReader source;
    private boolean hasNext = true;
    private char tab = '\t';

    public TsvReader(BufferedReader source) {
        this.source = source;
    }

    public String[] readNext() throws IOException {
        String current = source.readLine();
        if (current == null) {
            hasNext = false;
            return null;
        }
        return tokenize(current, tab);
    }

    public List<String> firstColumn() throws IOException {
        List<String> column = new ArrayList<String>();
        while (hasNext) {
            String[] fields = readNext();
            if (fields != null && fields.length > 0) {
                column.add(fields[0]);
            }
        }
        return column;
    }

    public long totalWidth() throws IOException {
        long width = 0;
        while (hasNext) {
            String[] row = readNext();
            if (row == null) {
                continue;
            }
            width += row.length;
        }
        return width;
    }

    private String[] tokenize(String line, char sep) {
        return line.split(String.valueOf(sep), -1);
    }
}
