# q=3  SRG(81,24,9,6) H1
111111111000
000111120100
011001120010
101010120001
