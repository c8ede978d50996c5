import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int[] a = new int[n];
        for (int i = 0; i < n; i++) a[i] = in.nextInt();
        int count = 0;
        for (int i = 0; i < n; i++) {
            boolean repeated = false;
            for (int j = 0; j < n; j++) {
                if (j != i && a[j] == a[i]) repeated = true;
            }
            if (!repeated) count++;
        }
        System.out.println(count);
    }
}
