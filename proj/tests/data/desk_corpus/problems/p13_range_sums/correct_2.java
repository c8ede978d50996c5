import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int q = in.nextInt();
        int[] a = new int[n];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        for (int k = 0; k < q; k++) {
            int l = in.nextInt();
            int r = in.nextInt();
            long s = 0;
            for (int i = l - 1; i < r; i++) s += a[i];
            System.out.println(s);
        }
    }
}
