package client;

import java.io.IOException;
import static codec.Base64Codec.*;

public class KeyStoreDump {
    public java.util.List<String> dumpAll(java.util.List<byte[]> keys) {
        java.util.List<String> out = new java.util.ArrayList<String>();
        for (int i = 0; i < keys.size(); i++) {
            byte[] key = keys.get(i);
            String encoded = null;
            try {
                encoded = encode(key, 0, key.length, NO_OPTIONS);
            } catch (IOException ex) {
                continue;
            }
            out.add(encoded);
        }
        return out;
    }
}
