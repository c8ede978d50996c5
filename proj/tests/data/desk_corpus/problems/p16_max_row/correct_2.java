import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int r = in.nextInt();
        int c = in.nextInt();
        long[] sums = new long[r];
        for (int i = 0; i < r; i++) {
            for (int j = 0; j < c; j++) {
                sums[i] += in.nextInt();
            }
        }
        int best = 0;
        for (int i = 1; i < r; i++) {
            if (sums[i] > sums[best]) best = i;
        }
        System.out.println(best + 1);
    }
}
