class Generics {
    Map<String, List<Integer>> index;
    List<? extends Number> numbers;
    java.util.Set<String> qualified;

    Map<String, List<Integer>> build(List<String> keys) {
        Map<String, List<Integer>> result = new HashMap<String, List<Integer>>();
        return result;
    }
}
