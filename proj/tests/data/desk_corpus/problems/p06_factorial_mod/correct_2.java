import java.util.*;

public class Main {
    static final long MOD = 1000000007L;

    static long factorial(int n) {
        if (n <= 1) return 1;
        return n * factorial(n - 1) % MOD;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        System.out.println(factorial(in.nextInt()));
    }
}
