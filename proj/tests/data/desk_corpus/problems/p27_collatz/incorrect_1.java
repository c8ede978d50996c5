import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        long n = new Scanner(System.in).nextLong();
        int count = 0;
        do {
            n = n % 2 == 0 ? n / 2 : 3 * n + 1;
            count++;
        } while (n != 1);
        System.out.println(count);
    }
}
