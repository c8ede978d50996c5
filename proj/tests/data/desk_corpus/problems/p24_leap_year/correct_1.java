import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        int y = new Scanner(System.in).nextInt();
        boolean leap = y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
        System.out.println(leap ? "YES" : "NO");
    }
}
