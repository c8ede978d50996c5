import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int k = in.nextInt();
        Set<Integer> seen = new HashSet<>();
        boolean found = false;
        for (int i = 0; i < n; i++) {
            int x = in.nextInt();
            if (seen.contains(k - x)) found = true;
            seen.add(x);
        }
        System.out.println(found ? "YES" : "NO");
    }
}
