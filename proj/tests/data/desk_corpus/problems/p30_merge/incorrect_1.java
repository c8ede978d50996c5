import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int m = in.nextInt();
        int[] a = new int[n];
        int[] b = new int[m];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        for (int j = 0; j < m; j++) b[j] = in.nextInt();
        StringBuilder sb = new StringBuilder();
        int i = 0, j = 0;
        while (i < n && j < m) {
            sb.append(a[i] <= b[j] ? a[i++] : b[j++]).append(' ');
        }
        while (j < m) sb.append(b[j++]).append(' ');
        System.out.println(sb.toString().trim());
    }
}
