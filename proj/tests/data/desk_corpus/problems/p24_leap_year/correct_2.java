import java.util.*;

public class Main {
    static boolean isLeap(int year) {
        if (year % 400 == 0) return true;
        if (year % 100 == 0) return false;
        return year % 4 == 0;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        if (isLeap(in.nextInt())) {
            System.out.println("YES");
        } else {
            System.out.println("NO");
        }
    }
}
