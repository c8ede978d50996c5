import java.util.*;

public class Main {
    static boolean isEven(int x) {
        return (x & 1) == 0;
    }

    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int n = in.nextInt();
        int count = 0;
        int i = 0;
        while (i < n) {
            int x = in.nextInt();
            if (isEven(x)) {
                count = count + 1;
            }
            i++;
        }
        System.out.println(count);
    }
}
