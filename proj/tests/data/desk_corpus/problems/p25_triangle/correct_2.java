import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        long[] s = new long[3];
        for (int i = 0; i < 3; i++) s[i] = in.nextLong();
        Arrays.sort(s);
        System.out.println(s[0] + s[1] > s[2] ? "YES" : "NO");
    }
}
