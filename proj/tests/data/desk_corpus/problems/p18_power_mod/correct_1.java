import java.util.Scanner;

public class Main {
    static long power(long b, long e, long m) {
        long result = 1 % m;
        b %= m;
        while (e > 0) {
            if ((e & 1) == 1) result = result * b % m;
            b = b * b % m;
            e >>= 1;
        }
        return result;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        long b = in.nextLong(), e = in.nextLong(), m = in.nextLong();
        System.out.println(power(b, e, m));
    }
}
