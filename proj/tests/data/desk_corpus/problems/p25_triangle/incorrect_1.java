import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int[] s = {in.nextInt(), in.nextInt(), in.nextInt()};
        Arrays.sort(s);
        boolean ok = s[0] + s[1] >= s[2];
        System.out.println(ok ? "YES" : "NO");
    }
}
