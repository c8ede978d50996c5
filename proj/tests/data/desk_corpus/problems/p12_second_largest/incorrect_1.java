import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int first = in.nextInt();
        int second = in.nextInt();
        if (first < second) {
            int t = first;
            first = second;
            second = t;
        }
        for (int i = 2; i < n; i++) {
            int x = in.nextInt();
            if (x > first) {
                second = first;
                first = x;
            } else if (x > second) {
                second = x;
            }
        }
        System.out.println(second);
    }
}
