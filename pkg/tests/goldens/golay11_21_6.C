# q=3 k=5 matrix=golay11 complement=no array={21;6} method=exact seed=0
00000
00001
00110
00111
00220
00221
01002
01020
01100
01112
01210
01222
02002
02011
02112
02121
02201
02222
10011
10012
10121
10122
10201
10202
11001
11010
11111
11120
11200
11221
12010
12022
12102
12120
12200
12212
20020
20022
20100
20102
20210
20212
21012
21021
21101
21122
21202
21211
22000
22021
22101
22110
22211
22220
