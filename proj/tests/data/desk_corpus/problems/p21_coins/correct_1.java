import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        int amount = new Scanner(System.in).nextInt();
        int[] coins = {25, 10, 5, 1};
        int count = 0;
        for (int c : coins) {
            count += amount / c;
            amount %= c;
        }
        System.out.println(count);
    }
}
