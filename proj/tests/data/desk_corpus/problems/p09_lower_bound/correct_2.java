import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int x = in.nextInt();
        int answer = n;
        for (int i = 0; i < n; i++) {
            int v = in.nextInt();
            if (v >= x && answer == n) {
                answer = i;
            }
        }
        System.out.println(answer);
    }
}
