import java.util.*;

public class Main {
    static long power(long b, long e, long m) {
        if (e == 0) return 1 % m;
        long half = power(b, e / 2, m);
        long sq = half * half % m;
        return e % 2 == 0 ? sq : sq * (b % m) % m;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        long b = in.nextLong();
        long e = in.nextLong();
        long m = in.nextLong();
        System.out.println(power(b, e, m));
    }
}
