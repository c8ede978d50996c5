import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int q = in.nextInt();
        long[] prefix = new long[n];
        for (int i = 0; i < n; i++) {
            prefix[i] = in.nextInt() + (i > 0 ? prefix[i - 1] : 0);
        }
        while (q-- > 0) {
            int l = in.nextInt();
            int r = in.nextInt();
            System.out.println(prefix[r - 1] - prefix[l - 1]);
        }
    }
}
