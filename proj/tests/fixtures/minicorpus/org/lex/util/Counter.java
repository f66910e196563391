package org.lex.util;

public class Counter {
    private long total;

    public void increment() {
        total++;
    }

    public long getTotal() {
        return total;
    }
}
