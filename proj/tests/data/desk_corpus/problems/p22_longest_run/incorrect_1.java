import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int prev = in.nextInt();
        int rises = 0;
        for (int i = 1; i < n; i++) {
            int x = in.nextInt();
            if (x > prev) rises++;
            prev = x;
        }
        System.out.println(rises + 1);
    }
}
