import java.util.Scanner;

public class Main {
    static long power(long b, long e, long m) {
        if (e == 1) return b % m;
        long half = power(b, e / 2, m);
        long sq = half * half % m;
        if (e % 2 == 1) sq = sq * b % m;
        return sq;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        long b = in.nextLong();
        long e = in.nextLong();
        long m = in.nextLong();
        System.out.println(power(b, e, m));
    }
}
