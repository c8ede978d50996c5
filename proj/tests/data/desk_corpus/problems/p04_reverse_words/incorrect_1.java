import java.util.*;

public class Main {
    public static void main(String[] args) {
        Scanner in = new Scanner(System.in);
        Deque<String> stack = new ArrayDeque<>();
        for (String w : in.nextLine().trim().split(" ")) stack.push(w);
        StringBuilder sb = new StringBuilder();
        while (stack.size() > 1) {
            if (sb.length() > 0) sb.append(' ');
            sb.append(stack.pop());
        }
        System.out.println(sb);
    }
}
