class Forward {
    int read() {
        return later + other.size;
    }

    void write(String text) {
        later = text.length();
    }

    int later;
    java.util.List<String> other;
}
