import java.util.*;

public class Main {
    public static void main(String[] args) {
        int amount = new Scanner(System.in).nextInt();
        int[] coins = {1, 5, 10};
        int[] dp = new int[amount + 1];
        for (int v = 1; v <= amount; v++) {
            dp[v] = Integer.MAX_VALUE;
            for (int c : coins) {
                if (c <= v) dp[v] = Math.min(dp[v], dp[v - c] + 1);
            }
        }
        System.out.println(dp[amount]);
    }
}
