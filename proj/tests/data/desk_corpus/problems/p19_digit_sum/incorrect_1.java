import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        String s = new Scanner(System.in).next();
        int total = 0;
        for (int i = 1; i < s.length(); i++) {
            total += Character.getNumericValue(s.charAt(i));
        }
        System.out.println(total);
    }
}
