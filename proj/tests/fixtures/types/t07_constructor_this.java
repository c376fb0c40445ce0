class Box {
    Object content;

    Box(Object content) {
        this.content = content;
    }

    Box wrap() {
        Box other = new Box(content);
        return other;
    }
}
