import java.util.*;

public class Main {
    static int collatz(long n) {
        if (n == 1) return 0;
        long next = n % 2 == 0 ? n / 2 : 3 * n + 1;
        return 1 + collatz(next);
    }

    public static void main(String[] args) {
        System.out.println(collatz(new Scanner(System.in).nextLong()));
    }
}
