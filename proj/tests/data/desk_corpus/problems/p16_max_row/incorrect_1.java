import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int r = in.nextInt();
        int c = in.nextInt();
        long bestSum = 0;
        int bestRow = 1;
        for (int i = 1; i <= r; i++) {
            long s = 0;
            for (int j = 0; j < c; j++) s += in.nextLong();
            if (s > bestSum) {
                bestSum = s;
                bestRow = i;
            }
        }
        System.out.println(bestRow);
    }
}
