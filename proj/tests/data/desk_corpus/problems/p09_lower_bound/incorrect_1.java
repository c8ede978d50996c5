import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int x = in.nextInt();
        int[] a = new int[n];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        int idx = Arrays.binarySearch(a, x);
        if (idx < 0) idx = -idx - 1;
        System.out.println(idx);
    }
}
