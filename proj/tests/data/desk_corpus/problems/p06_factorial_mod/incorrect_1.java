import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        int n = new Scanner(System.in).nextInt();
        int mod = 1000000007;
        int result = 1;
        for (int i = 2; i <= n; i++) {
            result = result * i % mod;
        }
        System.out.println(result);
    }
}
