import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        boolean prime = n >= 2;
        int d = 2;
        while (prime && d <= Math.sqrt(n)) {
            if (n % d == 0) prime = false;
            d++;
        }
        if (prime) {
            System.out.println("YES");
        } else {
            System.out.println("NO");
        }
    }
}
