import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int k = in.nextInt();
        int[] a = new int[n];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        Arrays.sort(a);
        int i = 0, j = n - 1;
        boolean found = false;
        while (i <= j) {
            int s = a[i] + a[j];
            if (s == k) {
                found = true;
                break;
            } else if (s < k) {
                i++;
            } else {
                j--;
            }
        }
        System.out.println(found ? "YES" : "NO");
    }
}
