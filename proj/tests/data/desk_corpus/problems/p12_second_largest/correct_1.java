import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        TreeSet<Integer> set = new TreeSet<>();
        for (int i = 0; i < n; i++) set.add(in.nextInt());
        set.pollLast();
        System.out.println(set.isEmpty() ? -1 : set.last());
    }
}
