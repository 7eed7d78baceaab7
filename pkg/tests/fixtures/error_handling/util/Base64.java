package util;

public class Base64 {
    public static final int NO_OPTIONS = 0;
    public static final int ENCODE = 1;
    public static final int GZIP = 2;
    private static final String PREFERRED_ENCODING = "US-ASCII";

    public static String encodeBytes(byte[] source, int off, int len, int options) throws java.io.IOException {
        java.io.ByteArrayOutputStream baos = new java.io.ByteArrayOutputStream();
        java.io.OutputStream b64os = new Base64OutputStream(baos, ENCODE | options);
        b64os.write(source, off, len);
        b64os.close();
        if ((options & GZIP) != 0) {
            throw new java.io.IOException("gzip not supported here");
        }
        return new String(baos.toByteArray(), PREFERRED_ENCODING);
    }

    public static String encodeBytes(byte[] source) {
        String encoded = null;
        try {
            encoded = encodeBytes(source, 0, source.length, NO_OPTIONS);
        } catch (java.io.IOException ex) {
            assert false : ex.getMessage();
        }
        return encoded;
    }

    public static String encodeBytes(byte[] source, int options) {
        String encoded = null;
        try {
            encoded = encodeBytes(source, 0, source.length, options);
        } catch (java.io.IOException ex) {
            return null;
        }
        return encoded;
    }
}
