# q=3  check matrix of the perfect ternary Golay (11,6,5) code; SRG(243,22,1,2)
12221010000
01222101000
21201200100
11011100010
22210100001
