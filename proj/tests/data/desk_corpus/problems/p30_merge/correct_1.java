import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt(), m = in.nextInt();
        int[] a = new int[n];
        int[] b = new int[m];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        for (int j = 0; j < m; j++) b[j] = in.nextInt();
        StringBuilder sb = new StringBuilder();
        int i = 0, j = 0;
        while (i < n || j < m) {
            int v;
            if (j >= m || (i < n && a[i] <= b[j])) v = a[i++];
            else v = b[j++];
            if (sb.length() > 0) sb.append(' ');
            sb.append(v);
        }
        System.out.println(sb);
    }
}
