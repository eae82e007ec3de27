# q=3 k=5 matrix=golay11 complement=no array={22;5} method=milp seed=0
00000
00021
00110
00122
00201
01010
01102
01121
01212
01220
02001
02012
02111
02200
02222
10011
10112
10121
10202
10220
11012
11021
11100
11201
11210
12000
12022
12102
12120
12211
20002
20010
20100
20211
20222
21001
21022
21111
21120
21202
22020
22101
22112
22210
22221
