import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        long a = in.nextLong();
        long b = in.nextLong();
        while (a != b) {
            if (a > b) a -= b;
            else b -= a;
        }
        System.out.println(a);
    }
}
