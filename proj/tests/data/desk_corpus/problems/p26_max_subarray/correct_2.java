import java.util.*;

public class Main {
    static long maxSubarray(long[] a) {
        long best = a[0];
        for (int i = 0; i < a.length; i++) {
            long total = 0;
            for (int j = i; j < a.length; j++) {
                total += a[j];
                if (total > best) best = total;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        long[] a = new long[n];
        for (int i = 0; i < n; i++) a[i] = in.nextLong();
        System.out.println(maxSubarray(a));
    }
}
