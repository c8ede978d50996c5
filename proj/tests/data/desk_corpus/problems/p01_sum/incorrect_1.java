import java.io.*;
import java.util.*;

public class Main {
    public static void main(String[] args) throws IOException {
        BufferedReader br = new BufferedReader(new InputStreamReader(System.in));
        int n = Integer.parseInt(br.readLine().trim());
        String[] parts = br.readLine().trim().split(" ");
        long s = 0;
        int i = 0;
        while (i < n - 1) {
            s += Long.parseLong(parts[i]);
            i++;
        }
        System.out.println(s);
    }
}
