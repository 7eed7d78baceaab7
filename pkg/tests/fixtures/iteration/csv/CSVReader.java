package csv;

import java.io.BufferedReader;
import java.io.IOException;
import java.util.ArrayList;
import java.util.List;

public class CSVReader {
    private BufferedReader br;
    private boolean hasNext = true;
    private char separator = ',';

    public CSVReader(BufferedReader reader) {
        this.br = reader;
    }

    /** Reads one line and splits it; clears hasNext at end of input. */
    public String[] readNext() throws IOException {
        String nextLine = br.readLine();
        if (nextLine == null) {
            hasNext = false;
            return null;
        }
        return parseLine(nextLine, separator);
    }

    public List<String[]> readAll() throws IOException {
        List<String[]> allElements = new ArrayList<String[]>();
        while (hasNext) {
            String[] nextLineAsTokens = readNext();
            if (nextLineAsTokens != null)
                allElements.add(nextLineAsTokens);
        }
        return allElements;
    }

    public int countRows() throws IOException {
        int rows = 0;
        while (hasNext) {
            String[] line = readNext();
            if (line != null) {
                rows++;
            }
        }
        return rows;
    }

    protected String[] parseLine(String line, char sep) {
        return line.split(String.valueOf(sep));
    }
}
