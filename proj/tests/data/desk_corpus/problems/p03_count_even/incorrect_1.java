import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        int evens = 0;
        while (in.hasNextInt()) {
            int x = in.nextInt();
            if (x % 2 == 0) evens++;
        }
        System.out.println(evens);
    }
}
