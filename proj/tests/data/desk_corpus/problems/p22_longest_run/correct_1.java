import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int prev = in.nextInt();
        int best = 1, cur = 1;
        for (int i = 1; i < n; i++) {
            int x = in.nextInt();
            if (x > prev) cur++;
            else cur = 1;
            best = Math.max(best, cur);
            prev = x;
        }
        System.out.println(best);
    }
}
