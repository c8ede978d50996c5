import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int[] a = new int[n];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        int best = 0;
        int start = 0;
        for (int i = 0; i < n; i++) {
            if (i > 0 && a[i] <= a[i - 1]) start = i;
            best = Math.max(best, i - start + 1);
        }
        System.out.println(best);
    }
}
