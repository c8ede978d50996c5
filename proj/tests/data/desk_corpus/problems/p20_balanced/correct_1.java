import java.util.Scanner;

public class Main {
    public static void main(String[] args) {
        String s = new Scanner(System.in).next();
        int depth = 0;
        boolean ok = true;
        for (char c : s.toCharArray()) {
            if (c == '(') {
                depth++;
            } else {
                depth--;
                if (depth < 0) {
                    ok = false;
                    break;
                }
            }
        }
        System.out.println(ok && depth == 0 ? "YES" : "NO");
    }
}
