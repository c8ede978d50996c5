import java.util.Scanner;

public class Main {
    static int code(String w) {
        int s = 0;
        for (int i = 0; i < w.length(); i++) s += w.charAt(i);
        return s;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        String a = in.next();
        String b = in.next();
        boolean same = a.length() == b.length() && code(a) == code(b);
        System.out.println(same ? "YES" : "NO");
    }
}
