import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        String best = in.next();
        for (int i = 1; i < n; i++) {
            String s = in.next();
            if (s.compareTo(best) > 0) best = s;
        }
        System.out.println(best);
    }
}
