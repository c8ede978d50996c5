import java.util.*;

public class Main {
    static long fib(int n) {
        if (n < 2) return n;
        long prev = 0, cur = 1;
        for (int i = 2; i <= n; i++) {
            long next = prev + cur;
            prev = cur;
            cur = next;
        }
        return cur;
    }

    public static void main(String[] args) {
        System.out.println(fib(new Scanner(System.in).nextInt()));
    }
}
