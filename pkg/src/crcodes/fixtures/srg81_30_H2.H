# q=3  (15,4,{9,12}) code H2, SRG(81,30,9,12)
111000111111111
000111111222222
010010212012012
002002112021210
