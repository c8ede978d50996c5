import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int k = in.nextInt();
        int[] out = new int[n];
        for (int i = 0; i < n; i++) {
            out[(i + k) % n] = in.nextInt();
        }
        StringJoiner sj = new StringJoiner(" ");
        for (int x : out) sj.add(Integer.toString(x));
        System.out.println(sj);
    }
}
