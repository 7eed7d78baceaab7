package client;

import java.io.IOException;

public class Snapshot {
    private byte[] state;

    public String export() {
        String encoded = null;
        try {
            encoded = codec.Base64Codec.encode(state, 0, state.length, codec.Base64Codec.NO_OPTIONS);
        } catch (IOException ex) {
            System.err.println(ex);
        }
        return encoded;
    }
}
