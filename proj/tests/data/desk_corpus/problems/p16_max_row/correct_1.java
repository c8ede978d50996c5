import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int r = in.nextInt();
        int c = in.nextInt();
        long bestSum = Long.MIN_VALUE;
        int bestRow = 0;
        for (int i = 0; i < r; i++) {
            long s = 0;
            for (int j = 0; j < c; j++) s += in.nextInt();
            if (s > bestSum) {
                bestSum = s;
                bestRow = i + 1;
            }
        }
        System.out.println(bestRow);
    }
}
