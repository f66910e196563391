package org.lex.util;

public class XMLHttpRequestParser {
    private String rawXML;

    public void parseHTTPHeader(String headerLine) {
        rawXML = headerLine;
    }
}
