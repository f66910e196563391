package org.lex;

public class WordForm {
    private String lemma;

    public static class Inflection {
        private String suffix;

        public String apply(String stem) {
            return stem + suffix;
        }
    }

    public record Span(int start, int end) {
        public int size() {
            return end - start;
        }
    }
}
