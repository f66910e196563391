package org.lex;

public enum Color {
    RED("r"),
    GREEN("g") {
        @Override
        public String code() {
            return "green";
        }
    },
    BLUE("b");

    private final String shortCode;

    Color(String shortCode) {
        this.shortCode = shortCode;
    }

    public String code() {
        return shortCode;
    }
}
