import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        int n = new Scanner(System.in).nextInt();
        boolean prime = n > 1;
        if (n % 2 == 0) prime = false;
        for (int d = 3; d * d <= n; d += 2) {
            if (n % d == 0) prime = false;
        }
        System.out.println(prime ? "YES" : "NO");
    }
}
