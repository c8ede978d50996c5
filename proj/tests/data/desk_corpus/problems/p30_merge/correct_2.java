import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int m = in.nextInt();
        List<Integer> all = new ArrayList<>();
        for (int i = 0; i < n + m; i++) all.add(in.nextInt());
        Collections.sort(all);
        StringJoiner sj = new StringJoiner(" ");
        for (int x : all) sj.add(String.valueOf(x));
        System.out.println(sj);
    }
}
