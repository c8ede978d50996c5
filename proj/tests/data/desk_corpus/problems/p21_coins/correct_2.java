import java.util.*;

public class Main {
    static int minCoins(int amount) {
        int[] coins = {1, 5, 10, 25};
        int[] best = new int[amount + 1];
        Arrays.fill(best, Integer.MAX_VALUE);
        best[0] = 0;
        for (int v = 1; v <= amount; v++) {
            for (int c : coins) {
                if (c <= v && best[v - c] + 1 < best[v]) {
                    best[v] = best[v - c] + 1;
                }
            }
        }
        return best[amount];
    }

    public static void main(String[] args) {
        System.out.println(minCoins(new Scanner(System.in).nextInt()));
    }
}
