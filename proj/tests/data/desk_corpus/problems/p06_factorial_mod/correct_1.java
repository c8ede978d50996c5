import java.util.Scanner;

public class Main {
    static final long MOD = 1_000_000_007L;

    public static void main(String[] args) {
        int n = new Scanner(System.in).nextInt();
        long result = 1;
        for (int i = 2; i <= n; i++) {
            result = result * i % MOD;
        }
        System.out.println(result);
    }
}
