import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        String s = new Scanner(System.in).next();
        String r = new StringBuilder(s).reverse().toString();
        System.out.println(s.equals(r) ? "YES" : "NO");
    }
}
